int main(void) {
  static const int xs[] = {1, 5, 9, 3};
  static const int ys[] = {2, 7, 0};
  for (size_t i = 0; i < sizeof(xs) / sizeof(xs[0]); i++) {
    for (size_t j = 0; j < sizeof(ys) / sizeof(ys[0]); j++) {
      printf("%d\n", sort3(xs[i], ys[j]));
    }
  }
  return 0;
}
