#include <math.h>
#include <stddef.h>
#include <stdio.h>
#include <string.h>

@@FUNCTION@@

int main(void) {
    char s[] = "abcde";
    @FN@(s, 5);
    if (strcmp(s, "edcba") != 0) return 1;
    char t[] = "x";
    @FN@(t, 1);
    if (strcmp(t, "x") != 0) return 2;
    return 0;
}
