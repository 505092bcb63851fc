import sys

@@FUNCTION@@


def check(ok, code):
    if not ok:
        sys.exit(code)


check(@FN@([-5, 3, 12], 0, 10) == [0, 3, 10], 1)
check(@FN@([], 0, 1) == [], 2)
