package fixture.tempfield;

public class SessionBox {
    private int scratch;

    public int open(int v) {
        scratch = v * 2;
        int r = v + 5;
        if (r > 20) {
            r = r - 4;
        }
        while (r > 12) {
            r = r - 2;
        }
        return r;
    }
}
