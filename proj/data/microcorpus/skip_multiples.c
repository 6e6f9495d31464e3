int skip_multiples(int n) {
  int s = 0;
  int i;
  for (i = 0; i < n; i++) {
    if (i % 3 == 0)
      continue;
    s += i;
  }
  return s;
}
