int main(void) {
  static const int inputs[] = {0, 2, 4, 6, 8, 10, 12, 14, 16};
  for (size_t k = 0; k < sizeof(inputs) / sizeof(inputs[0]); k++) {
    printf("%d\n", ptr_sum(inputs[k]));
  }
  return 0;
}
