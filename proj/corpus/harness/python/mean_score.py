import sys

@@FUNCTION@@


def check(ok, code):
    if not ok:
        sys.exit(code)


check(@FN@([2, 4, 9]) == 5.0, 1)
check(@FN@([]) == 0.0, 2)
