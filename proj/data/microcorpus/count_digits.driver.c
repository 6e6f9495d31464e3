int main(void) {
  static const int inputs[] = {0, 7, -9, 10, 99, 100, -12345, 2147483, 1000000000};
  for (size_t k = 0; k < sizeof(inputs) / sizeof(inputs[0]); k++) {
    printf("%d\n", count_digits(inputs[k]));
  }
  return 0;
}
