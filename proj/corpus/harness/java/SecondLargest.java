import java.util.*;

class Main {
@@FUNCTION@@

    static void check(boolean ok, int code) {
        if (!ok) System.exit(code);
    }

    public static void main(String[] args) {
        check(@FN@(new int[] {4, 9, 7, 9}) == 7, 1);
        check(@FN@(new int[] {5}) == Integer.MIN_VALUE, 2);
    }
}
