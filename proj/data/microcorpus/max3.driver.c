int main(void) {
  static const int xs[] = {-5, 0, 3, 9};
  static const int ys[] = {-2, 0, 4, 11};
  for (size_t i = 0; i < sizeof(xs) / sizeof(xs[0]); i++) {
    for (size_t j = 0; j < sizeof(ys) / sizeof(ys[0]); j++) {
      printf("%d\n", max3(xs[i], ys[j]));
    }
  }
  return 0;
}
