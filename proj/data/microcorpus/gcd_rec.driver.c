int main(void) {
  static const int xs[] = {12, 18, 35, 64};
  static const int ys[] = {1, 6, 14, 27};
  for (size_t i = 0; i < sizeof(xs) / sizeof(xs[0]); i++) {
    for (size_t j = 0; j < sizeof(ys) / sizeof(ys[0]); j++) {
      printf("%d\n", gcd_rec(xs[i], ys[j]));
    }
  }
  return 0;
}
