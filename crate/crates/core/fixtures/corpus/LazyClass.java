package fixture.lazyclass;

public class Stub {
    public int bump(int v) {
        return v + 6;
    }
}
