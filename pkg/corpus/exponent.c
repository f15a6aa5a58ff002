// doubling inside a loop grows exponentially
int exponent(int X1, int X2) {
    loop X2 {
        X1 = X1 + X1;
    }
    return X1;
}
