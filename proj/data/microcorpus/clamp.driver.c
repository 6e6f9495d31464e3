int main(void) {
  static const int xs[] = {-9, -3, 0, 2, 8};
  static const int ys[] = {1, 3, 5};
  for (size_t i = 0; i < sizeof(xs) / sizeof(xs[0]); i++) {
    for (size_t j = 0; j < sizeof(ys) / sizeof(ys[0]); j++) {
      printf("%d\n", clamp(xs[i], ys[j]));
    }
  }
  return 0;
}
