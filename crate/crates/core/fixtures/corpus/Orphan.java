package fixture.orphan;

public class Constants {
    public static final int MAGIC_LIMIT = 42;
    public int churn(int v) {
        int x = v + 43;
        if (x > 81) {
            x = x - 16;
        }
        while (x > 51) {
            x = x - 1;
        }
        return x;
    }
}

public class Reader {
    public int clamp(int v) {
        int x = v;
        if (x > Constants.MAGIC_LIMIT) {
            x = Constants.MAGIC_LIMIT;
        }
        while (x < 3) {
            x = x + 14;
        }
        return x;
    }
}

public class Writer {
    public int fit(int v) {
        int y = v * 2;
        if (y > Constants.MAGIC_LIMIT) {
            y = y - 26;
        }
        while (y < 7) {
            y = y + 18;
        }
        return y;
    }
}
