"""Extremal envelopes: how far AUC and PPV_k can disagree.

For a fixed class ratio and a fixed PPV at the base-rate cut, only a
band of AUC values is attainable, and the band edges have closed
forms. This script tabulates the band for a few ratios, locates the
worst-case gap, and runs the inverse queries (feasible PPV given an
observed AUC). With matplotlib installed it also draws the curves.
"""

from aucppv import (
    ClassRatio,
    auc_max_given_ppvk,
    auc_min_given_ppvk,
    envelope_curve,
    format_number,
    ppvk_max_given_auc,
    ppvk_min_given_auc,
)


def print_curve(ratio: ClassRatio, max_rows: int = 11) -> None:
    curve = envelope_curve(ratio)
    note = " (swapped to the smaller class)" if curve.swapped else ""
    print(f"ratio {ratio.k1}:{ratio.k2}{note}, grid of {len(curve.samples)} hit levels:")
    step = max(1, (len(curve.samples) - 1) // (max_rows - 1))
    print("  ppv      auc_min   auc_max   width")
    for i in range(0, len(curve.samples), step):
        a, lo, hi = curve.samples[i]
        print(f"  {a:<7.4f}  {lo:<8.4f}  {hi:<8.4f}  {hi - lo:.4f}")
    print()


def main() -> None:
    print_curve(ClassRatio(10, 10))
    print_curve(ClassRatio(5, 20))
    print_curve(ClassRatio(4262, 7515))

    # The headline extreme: a classifier with zero precision at the
    # base-rate cut can still reach AUC 0.75 when positives are 1 in 5.
    extreme = auc_max_given_ppvk(0.0, ClassRatio(1, 4))
    print(f"ratio 1:4 at ppv 0: auc_max = {extreme}")

    # For balanced classes the widest band sits at ppv one half.
    ratio = ClassRatio(50, 50)
    widths = [(hi - lo, a) for a, lo, hi in envelope_curve(ratio).samples]
    width, at = max(widths)
    print(f"ratio 50:50 widest band: {width:.4f} at ppv {at}")
    print()

    # Inverse queries: which PPV values are consistent with an observed AUC?
    ratio = ClassRatio(4262, 7515)
    for auc in (0.55, 0.6909022561790231, 0.95):
        lo = ppvk_min_given_auc(auc, ratio)
        hi = ppvk_max_given_auc(auc, ratio)
        print(
            f"auc {format_number(auc):<13} feasible ppv"
            f" [{format_number(lo.value)}, {format_number(hi.value)}]"
            f" (hits {lo.hits}..{hi.hits} of {ratio.k1})"
        )
    print()

    # And the forward direction again, at one operating point.
    ppv = 0.5302674800563116
    print(
        f"ppv {ppv}: feasible auc"
        f" [{format_number(auc_min_given_ppvk(ppv, ratio))},"
        f" {format_number(auc_max_given_ppvk(ppv, ratio))}]"
    )

    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("\nmatplotlib not installed; skipping the plot")
        return

    fig, ax = plt.subplots(figsize=(6, 4.5))
    for k1, k2, color in [(10, 10, "tab:blue"), (2, 8, "tab:orange"), (4262, 7515, "tab:green")]:
        curve = envelope_curve(ClassRatio(k1, k2))
        xs = [a for a, _, _ in curve.samples]
        los = [lo for _, lo, _ in curve.samples]
        his = [hi for _, _, hi in curve.samples]
        ax.fill_between(xs, los, his, alpha=0.25, color=color)
        ax.plot(xs, los, color=color, lw=1)
        ax.plot(xs, his, color=color, lw=1, label=f"{k1}:{k2}")
    ax.set_xlabel("PPV at the base-rate cut")
    ax.set_ylabel("attainable AUC")
    ax.set_title("Extremal AUC envelopes by class ratio")
    ax.legend(title="k1:k2")
    fig.tight_layout()
    out = "envelope_curves.png"
    fig.savefig(out, dpi=150)
    print(f"\nwrote {out}")


if __name__ == "__main__":
    main()
