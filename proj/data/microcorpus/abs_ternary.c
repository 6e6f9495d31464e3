int abs_ternary(int x) {
  int r;
  r = x < 0 ? -x : x;
  return r;
}
