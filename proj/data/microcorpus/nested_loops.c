int nested_loops(int n) {
  int total = 0;
  int i, j;
  for (i = 0; i < n; i++) {
    for (j = i; j < n; j++) {
      total += i * j;
    }
  }
  return total;
}
