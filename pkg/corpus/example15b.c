// foo with the call to f inlined by hand; X3 and R are the fresh copies
void foo(int X1, int X2) {
    int X3;
    int R;
    X2 = X1 + X1;
    X3 = X2;
    R = X2;
    while (X3 > 0) {
        R = X3 + X3;
    }
    X1 = R;
}
