import java.util.*;

class Main {
@@FUNCTION@@

    static void check(boolean ok, int code) {
        if (!ok) System.exit(code);
    }

    public static void main(String[] args) {
        check(@FN@("one two  three").equals("three two one"), 1);
        check(@FN@("solo").equals("solo"), 2);
    }
}
