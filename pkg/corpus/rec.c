int rec(int X1, int X2) {
    int X3;
    X1 = X1 + X2;
    X3 = rec(X1, X2);
    return X3;
}
