import sys

@@FUNCTION@@


def check(ok, code):
    if not ok:
        sys.exit(code)


check(@FN@(5) == 120, 1)
check(@FN@(0) == 1, 2)
