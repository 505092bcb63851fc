import sys

@@FUNCTION@@


def check(ok, code):
    if not ok:
        sys.exit(code)


check(@FN@(0) == 0, 1)
check(@FN@(10) == 55, 2)
