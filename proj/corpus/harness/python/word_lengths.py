import sys

@@FUNCTION@@


def check(ok, code):
    if not ok:
        sys.exit(code)


check(@FN@("a bb cccc") == ([1, 2, 4], 4), 1)
check(@FN@("") == ([], 0), 2)
