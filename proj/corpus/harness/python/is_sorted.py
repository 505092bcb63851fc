import sys

@@FUNCTION@@


def check(ok, code):
    if not ok:
        sys.exit(code)


check(@FN@([1, 2, 2, 5]), 1)
check(not @FN@([3, 1, 2]), 2)
check(@FN@([]), 3)
