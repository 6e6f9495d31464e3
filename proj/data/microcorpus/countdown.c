int countdown(int n) {
  int seen = 0;
  while (n-- > 0) {
    seen += n % 3 == 0 ? 2 : 1;
  }
  return seen * 7 + n;
}
