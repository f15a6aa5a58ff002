int if_loop(int X1, int X2, int X3) {
    loop X3 {
        if (X1 > X2) {
            X1 = X2;
        } else {
            X2 = X1 + X3;
        }
    }
    return X2;
}
