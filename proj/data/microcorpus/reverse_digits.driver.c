int main(void) {
  static const int inputs[] = {0, 5, 12, -34, 100, 1203, -9870, 55555, 808};
  for (size_t k = 0; k < sizeof(inputs) / sizeof(inputs[0]); k++) {
    printf("%d\n", reverse_digits(inputs[k]));
  }
  return 0;
}
