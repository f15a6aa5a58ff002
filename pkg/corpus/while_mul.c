int while_mul(int X1, int X2, int X3) {
    while (X1 < 10) {
        X1 = X2 * X3;
    }
    return X1;
}
