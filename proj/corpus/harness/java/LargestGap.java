import java.util.*;

class Main {
@@FUNCTION@@

    static void check(boolean ok, int code) {
        if (!ok) System.exit(code);
    }

    public static void main(String[] args) {
        check(@FN@(new int[] {1, 3, 10, 12}) == 7, 1);
        check(@FN@(new int[] {4}) == 0, 2);
    }
}
