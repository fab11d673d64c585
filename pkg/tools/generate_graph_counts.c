/*
 * Regenerates src/lightsout/data/graph_counts.txt: the number of unlabeled
 * simple graphs on n vertices for n = 1..100, computed exactly.
 *
 * Method: Burnside sum over the conjugacy classes of S_n.  Each class is a
 * partition [k_1..k_n] (k_i cycles of length i); its contribution is
 * (n! / prod_i i^{k_i} k_i!) * 2^c, where c is the number of orbits of the
 * pair set under a class representative, via the closed form
 *     c = (sum_i l(i)^2 phi(i) - l(1) + l(2)) / 2,   l(i) = sum_{i|j} k_j.
 * The grand total divides exactly by n!.
 *
 * Build:  gcc -O2 -o generate_graph_counts generate_graph_counts.c -lgmp
 * Run:    ./generate_graph_counts > graph_counts.txt
 */
#include <assert.h>
#include <gmp.h>
#include <stdio.h>

#define NMAX 100

static int n;
static mpz_t nfact, D, acc, cls, tmp;
static long l[NMAX + 1];
static long S; /* sum over i of l(i)^2 * phi(i) */
static int kcount[NMAX + 1];
static long phi[NMAX + 1];
static int divs[NMAX + 1][16], ndivs[NMAX + 1];

static void push_part(int p)
{
    kcount[p]++;
    mpz_mul_ui(D, D, (unsigned long)p * kcount[p]);
    for (int t = 0; t < ndivs[p]; t++) {
        int d = divs[p][t];
        S += (2 * l[d] + 1) * phi[d];
        l[d]++;
    }
}

static void pop_part(int p)
{
    mpz_divexact_ui(D, D, (unsigned long)p * kcount[p]);
    kcount[p]--;
    for (int t = 0; t < ndivs[p]; t++) {
        int d = divs[p][t];
        l[d]--;
        S -= (2 * l[d] + 1) * phi[d];
    }
}

static void leaf(void)
{
    long c2 = S - l[1] + l[2];
    assert(c2 >= 0 && c2 % 2 == 0);
    mpz_divexact(cls, nfact, D);
    mpz_mul_2exp(tmp, cls, (unsigned long)(c2 / 2));
    mpz_add(acc, acc, tmp);
}

/* All partitions of r with parts <= p, non-increasing order of part size. */
static void rec(int p, int r)
{
    if (r == 0) {
        leaf();
        return;
    }
    if (p == 1) {
        for (int t = 0; t < r; t++)
            push_part(1);
        leaf();
        for (int t = 0; t < r; t++)
            pop_part(1);
        return;
    }
    rec(p - 1, r);
    int added = 0;
    while (r >= p) {
        push_part(p);
        r -= p;
        added++;
        if (r == 0)
            leaf();
        else
            rec(p - 1, r);
    }
    while (added--)
        pop_part(p);
}

int main(void)
{
    for (int i = 1; i <= NMAX; i++) {
        phi[i] = 0;
        for (int j = 1; j <= i; j++) {
            int a = i, b = j;
            while (b) {
                int t = a % b;
                a = b;
                b = t;
            }
            if (a == 1)
                phi[i]++;
        }
        ndivs[i] = 0;
        for (int d = 1; d <= i; d++)
            if (i % d == 0)
                divs[i][ndivs[i]++] = d;
    }

    mpz_inits(nfact, D, acc, cls, tmp, NULL);
    for (n = 1; n <= NMAX; n++) {
        mpz_fac_ui(nfact, (unsigned long)n);
        mpz_set_ui(D, 1);
        mpz_set_ui(acc, 0);
        S = 0;
        for (int i = 0; i <= NMAX; i++) {
            l[i] = 0;
            kcount[i] = 0;
        }
        rec(n, n);
        assert(mpz_cmp_ui(D, 1) == 0 && S == 0);
        assert(mpz_divisible_p(acc, nfact));
        mpz_divexact(acc, acc, nfact);
        gmp_printf("%d %Zd\n", n, acc);
        fflush(stdout);
        fprintf(stderr, "done n=%d\n", n);
    }
    mpz_clears(nfact, D, acc, cls, tmp, NULL);
    return 0;
}
