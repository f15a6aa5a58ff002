int f(int X1, int X2) {
    while (X1 > 0) {
        X2 = X1 + X1;
    }
    return X2;
}

void foo(int X1, int X2) {
    X2 = X1 + X1;
    X1 = f(X2, X2);
}
