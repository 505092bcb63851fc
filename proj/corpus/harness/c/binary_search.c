#include <math.h>
#include <stddef.h>
#include <stdio.h>
#include <string.h>

@@FUNCTION@@

int main(void) {
    int a[] = {1, 3, 5, 7, 9, 11};
    if (@FN@(a, 6, 7) != 3) return 1;
    if (@FN@(a, 6, 1) != 0) return 2;
    if (@FN@(a, 6, 4) != -1) return 3;
    if (@FN@(a, 0, 4) != -1) return 4;
    return 0;
}
