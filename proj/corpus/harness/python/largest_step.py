import sys

@@FUNCTION@@


def check(ok, code):
    if not ok:
        sys.exit(code)


check(@FN@([1, 4, 2, 9, 10]) == 7, 1)
check(@FN@([5, 3, 1]) == 0, 2)
