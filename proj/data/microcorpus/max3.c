int max3(int a, int b) {
  int c = a - b;
  int m;
  m = a > b ? a : b;
  m = m > c ? m : c;
  return m;
}
