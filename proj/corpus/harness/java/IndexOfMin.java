import java.util.*;

class Main {
@@FUNCTION@@

    static void check(boolean ok, int code) {
        if (!ok) System.exit(code);
    }

    public static void main(String[] args) {
        check(@FN@(new double[] {3.0, -1.5, 2.0, -1.5}) == 1, 1);
        check(@FN@(new double[] {7.0}) == 0, 2);
    }
}
