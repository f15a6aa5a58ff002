// greatest common divisor by repeated subtraction
int gcd(int X1, int X2) {
    while (X1 != X2) {
        if (X1 > X2) {
            X1 = X1 - X2;
        } else {
            X2 = X2 - X1;
        }
    }
    return X1;
}
