"""Which T-primes P_t are generated by the monomial x^{e_t}?

For every t of a small chain, prints the first sampled element of P_t that
is not a multiple of x^{e_t} (if any) and confirms P_t is the radical of
(x^{e_t}). Only the top element of T gives a principal prime.

    python3 scripts/principal_primes.py [n]
"""

import sys

from dedekind.lexgroup import LexVector
from dedekind.orders import Chain
from dedekind.valuation import FieldElement, in_t_prime, principality_check


def main() -> int:
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    chain = Chain.of_size(n)
    for t in chain:
        r = principality_check(chain, t, samples=500)
        print(f"t={t}: principal={r.equals_monomial_ideal.holds} radical={r.equals_radical.holds} top={r.is_max}")
        if not r.equals_monomial_ideal.holds:
            print(f"    sampled counterexample v = {r.equals_monomial_ideal.counterexample['v']}")
    if n >= 2:
        t, s = chain.labels[0], chain.labels[1]
        x = FieldElement.monomial(chain, LexVector.unit(chain, t) - LexVector.unit(chain, s))
        quotient = x / FieldElement.monomial(chain, LexVector.unit(chain, t))
        print(f"x^(e_{t} - e_{s}) in P_{t}: {in_t_prime(x, t)}; divided by x^e_{t} has value "
              f"{LexVector(chain, tuple(a - b for a, b in zip(quotient.num.lowest(), quotient.den.lowest()))).to_json()} < 0")
    return 0


if __name__ == "__main__":
    sys.exit(main())
