int array_max(int shift) {
  int data[8] = {4, -2, 9, 13, -7, 0, 5, 8};
  int best = data[0] - shift;
  int i;
  for (i = 1; i < 8; i++) {
    int v = data[i] * (i % 2 ? shift : 1);
    best = v > best ? v : best;
  }
  return best;
}
