package fixture.deadcode;

public class Ledger {
    private int cache;

    public int post(int v) {
        int x = v + 23;
        if (x > 64) {
            x = x - 9;
        }
        while (x > 41) {
            x = x - 4;
        }
        return x;
    }

    private int stale() {
        int z = 77;
        z = z + 123;
        return z;
    }
}
