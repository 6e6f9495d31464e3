int main(void) {
  static const int inputs[] = {-2, -1, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  for (size_t k = 0; k < sizeof(inputs) / sizeof(inputs[0]); k++) {
    printf("%d\n", classify_switch(inputs[k]));
  }
  return 0;
}
