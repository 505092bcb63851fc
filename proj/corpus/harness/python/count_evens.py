import sys

@@FUNCTION@@


def check(ok, code):
    if not ok:
        sys.exit(code)


check(@FN@([1, 2, 4, 7, 8]) == 3, 1)
check(@FN@([]) == 0, 2)
