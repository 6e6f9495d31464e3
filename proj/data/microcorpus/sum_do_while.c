int sum_do_while(int n) {
  int s = 0;
  int k = n;
  do {
    s += k;
    k--;
  } while (k > 0);
  return s;
}
