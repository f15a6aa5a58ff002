int assign_expression(int X1, int X2, int X3) {
    X1 = X2 + X3 * X3;
    return X1;
}
