import java.util.*;

class Main {
@@FUNCTION@@

    static void check(boolean ok, int code) {
        if (!ok) System.exit(code);
    }

    public static void main(String[] args) {
        check(@FN@(0).equals("0") && @FN@(5).equals("101") && @FN@(16).equals("10000"), 1);
    }
}
