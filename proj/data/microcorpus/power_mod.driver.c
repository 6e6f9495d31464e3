int main(void) {
  static const int xs[] = {2, 3, -5, 10};
  static const int ys[] = {0, 1, 5, 13, 40};
  for (size_t i = 0; i < sizeof(xs) / sizeof(xs[0]); i++) {
    for (size_t j = 0; j < sizeof(ys) / sizeof(ys[0]); j++) {
      printf("%d\n", power_mod(xs[i], ys[j]));
    }
  }
  return 0;
}
