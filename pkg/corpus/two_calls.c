int add(int X, int Y) {
    X = X + Y;
    return X;
}

int twice(int A, int B, int C) {
    C = add(A, B);
    if (A > B) {
        B = A * C;
    }
    A = add(C, B);
    return A;
}
