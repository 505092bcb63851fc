import sys

@@FUNCTION@@


def check(ok, code):
    if not ok:
        sys.exit(code)


check(@FN@(1234) == 10, 1)
check(@FN@(-507) == 12, 2)
check(@FN@(0) == 0, 3)
