#include <math.h>
#include <stddef.h>
#include <stdio.h>
#include <string.h>

@@FUNCTION@@

int main(void) {
    double d[] = {1.5, -2.0, 7.25, 3.0};
    if (@FN@(d, 4) != 7.25) return 1;
    if (@FN@(d, 1) != 1.5) return 2;
    return 0;
}
