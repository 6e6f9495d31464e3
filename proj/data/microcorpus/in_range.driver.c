int main(void) {
  static const int xs[] = {-3, -1, 0, 4, 7};
  static const int ys[] = {0, 4, 7};
  for (size_t i = 0; i < sizeof(xs) / sizeof(xs[0]); i++) {
    for (size_t j = 0; j < sizeof(ys) / sizeof(ys[0]); j++) {
      printf("%d\n", in_range(xs[i], ys[j]));
    }
  }
  return 0;
}
