int main(void) {
  for (int n = 0; n < 15; n++) {
    printf("%ld\n", fact_rec(n));
  }
  return 0;
}
