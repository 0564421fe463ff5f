import sys
import string

from hypothesis import settings, strategies as st

from dedekind.orders import Chain

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def chains(draw, max_size=8):
    labels = draw(st.lists(st.sampled_from(string.ascii_lowercase), unique=True, max_size=max_size))
    return Chain(tuple(labels))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
