#include <math.h>
#include <stddef.h>
#include <stdio.h>
#include <string.h>

@@FUNCTION@@

int main(void) {
    int g[] = {80, 90, 100, 71};
    if (fabs(@FN@(g, 4) - 85.25) > 1e-9) return 1;
    if (@FN@(g, 0) != 0.0) return 2;
    return 0;
}
