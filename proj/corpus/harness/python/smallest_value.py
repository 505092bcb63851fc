import sys

@@FUNCTION@@


def check(ok, code):
    if not ok:
        sys.exit(code)


check(@FN@([4, -2, 7]) == -2, 1)
check(@FN@([9]) == 9, 2)
