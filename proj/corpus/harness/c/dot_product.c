#include <math.h>
#include <stddef.h>
#include <stdio.h>
#include <string.h>

@@FUNCTION@@

int main(void) {
    double x[] = {1.0, 2.0, 3.0};
    double y[] = {4.0, -5.0, 6.0};
    if (@FN@(x, y, 3) != 12.0) return 1;
    if (@FN@(x, y, 0) != 0.0) return 2;
    return 0;
}
