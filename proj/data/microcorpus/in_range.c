int in_range(int x, int hi) {
  int lo = -2;
  if (x > lo && x < hi)
    return 1;
  if (x == hi && hi > 0) {
    return 2;
  }
  return 0;
}
