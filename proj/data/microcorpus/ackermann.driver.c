int main(void) {
  static const int xs[] = {0, 1, 2};
  static const int ys[] = {0, 1, 2, 3};
  for (size_t i = 0; i < sizeof(xs) / sizeof(xs[0]); i++) {
    for (size_t j = 0; j < sizeof(ys) / sizeof(ys[0]); j++) {
      printf("%d\n", ackermann(xs[i], ys[j]));
    }
  }
  return 0;
}
