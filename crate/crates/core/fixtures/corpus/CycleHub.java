package fixture.cyclehub;

import fixture.spaghetti;

public class CycleHub {
    public int churn(int v) {
        int x = v + 11;
        if (x > 35) {
            x = x - 2;
        }
        while (x > 9) {
            x = x - 1;
        }
        return x;
    }
}
