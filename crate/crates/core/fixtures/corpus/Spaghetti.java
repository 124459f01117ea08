package fixture.spaghetti;

import fixture.cyclehub;

public class TangledLoop {
    public int process(int seed) {
        int acc = seed;
        int idx = 0;
        while (idx < 40) {
            if (acc > 100) {
                acc = acc - 17;
            }
            if (acc > 61) {
                acc = acc + 5;
            }
            for (int i0 = 0; i0 < 4; i0 = i0 + 1) {
                acc = acc + i0;
            }
            while (acc > 200) {
                acc = acc - 23;
            }
            if (acc > 113) {
                acc = acc - 27;
            }
            if (acc > 70) {
                acc = acc + 8;
            }
            for (int i1 = 0; i1 < 5; i1 = i1 + 1) {
                acc = acc + i1;
            }
            while (acc > 217) {
                acc = acc - 30;
            }
            if (acc > 126) {
                acc = acc - 37;
            }
            if (acc > 79) {
                acc = acc + 11;
            }
            for (int i2 = 0; i2 < 6; i2 = i2 + 1) {
                acc = acc + i2;
            }
            while (acc > 234) {
                acc = acc - 37;
            }
            if (acc > 139) {
                acc = acc - 47;
            }
            if (acc > 88) {
                acc = acc + 14;
            }
            for (int i3 = 0; i3 < 7; i3 = i3 + 1) {
                acc = acc + i3;
            }
            while (acc > 251) {
                acc = acc - 44;
            }
            idx = idx + 1;
        }
        return acc;
    }
}
