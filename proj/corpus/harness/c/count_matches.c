#include <math.h>
#include <stddef.h>
#include <stdio.h>
#include <string.h>

@@FUNCTION@@

int main(void) {
    int a[] = {1, 5, 9, 12, 5, 3};
    if (@FN@(a, 6, 3, 9) != 4) return 1;
    if (@FN@(a, 6, 20, 30) != 0) return 2;
    return 0;
}
