int main(void) {
  static const int xs[] = {-2, 0, 3, 7};
  static const int ys[] = {-1, 2, 5};
  for (size_t i = 0; i < sizeof(xs) / sizeof(xs[0]); i++) {
    for (size_t j = 0; j < sizeof(ys) / sizeof(ys[0]); j++) {
      printf("%d\n", struct_dist(xs[i], ys[j]));
    }
  }
  return 0;
}
