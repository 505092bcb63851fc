import java.util.*;

class Main {
@@FUNCTION@@

    static void check(boolean ok, int code) {
        if (!ok) System.exit(code);
    }

    public static void main(String[] args) {
        check(@FN@(new int[] {2, 3, 7}) == 42L, 1);
        check(@FN@(new int[] {}) == 1L, 2);
    }
}
