import sys

@@FUNCTION@@


def check(ok, code):
    if not ok:
        sys.exit(code)


check(@FN@(3) == 14, 1)
check(@FN@(0) == 0, 2)
