int main(void) {
  static const int xs[] = {-1, 0, 2, 3, 6};
  static const int ys[] = {1, 2, 4, 9};
  for (size_t i = 0; i < sizeof(xs) / sizeof(xs[0]); i++) {
    for (size_t j = 0; j < sizeof(ys) / sizeof(ys[0]); j++) {
      printf("%d\n", and_chain(xs[i], ys[j]));
    }
  }
  return 0;
}
