#include <math.h>
#include <stddef.h>
#include <stdio.h>
#include <string.h>

@@FUNCTION@@

int main(void) {
    int a[] = {3, -1, 4, -1, 5};
    if (@FN@(a, 5) != 12) return 1;
    if (@FN@(a, 0) != 0) return 2;
    return 0;
}
