package fixture.longparams;

public class Dispatcher {
    public int configure(int a, int b, int c, int d, int e, int f) {
        int r = a + b;
        r = r + c + d;
        r = r + e + f;
        return r;
    }
    public int churn(int v) {
        int x = v + 29;
        if (x > 66) {
            x = x - 14;
        }
        while (x > 39) {
            x = x - 1;
        }
        return x;
    }
}
