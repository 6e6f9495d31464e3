int bubble_sort(int seed) {
  int a[6];
  int i, j, tmp;
  for (i = 0; i < 6; i++)
    a[i] = (seed * (i + 3)) % 11;
  for (i = 0; i < 5; i++) {
    for (j = 0; j < 5 - i; j++) {
      if (a[j] > a[j + 1]) {
        tmp = a[j];
        a[j] = a[j + 1];
        a[j + 1] = tmp;
      }
    }
  }
  return a[0] * 100000 + a[2] * 1000 + a[3] * 100 + a[5];
}
