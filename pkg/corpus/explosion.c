// a cascade of independent additions: 3^17 derivations, one matrix
int explosion(int X0, int X1, int X2, int X3, int X4, int X5,
              int X6, int X7, int X8, int X9, int X10, int X11,
              int X12, int X13, int X14, int X15, int X16, int X17) {
    X0 = X0 + X1;
    X1 = X1 + X2;
    X2 = X2 + X3;
    X3 = X3 + X4;
    X4 = X4 + X5;
    X5 = X5 + X6;
    X6 = X6 + X7;
    X7 = X7 + X8;
    X8 = X8 + X9;
    X9 = X9 + X10;
    X10 = X10 + X11;
    X11 = X11 + X12;
    X12 = X12 + X13;
    X13 = X13 + X14;
    X14 = X14 + X15;
    X15 = X15 + X16;
    X16 = X16 + X17;
    return X0;
}
