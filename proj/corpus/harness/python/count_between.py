import sys

@@FUNCTION@@


def check(ok, code):
    if not ok:
        sys.exit(code)


check(@FN@([1, 5, 7, 10, 11], 5, 10) == 3, 1)
check(@FN@([], 0, 1) == 0, 2)
