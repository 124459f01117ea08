package fixture.refused;

public class BaseWidget {
    public int render() {
        int r = 4;
        r = r + 9;
        return r;
    }
    public int margin() {
        int r = 7;
        r = r + 14;
        return r;
    }
    public int padding() {
        int r = 10;
        r = r + 19;
        return r;
    }
    public int border() {
        int r = 13;
        r = r + 24;
        return r;
    }
    public int shade() {
        int r = 16;
        r = r + 29;
        return r;
    }
    public int anchor() {
        int r = 19;
        r = r + 34;
        return r;
    }
}

public class PlainWidget extends BaseWidget {
    public int render() {
        int r = 2;
        r = r + 31;
        return r;
    }
    public int churn(int v) {
        int x = v + 37;
        if (x > 72) {
            x = x - 12;
        }
        while (x > 45) {
            x = x - 1;
        }
        return x;
    }
}
