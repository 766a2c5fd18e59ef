// Entropy-over-steps line chart on a bare canvas.

const MARGIN = 28;

export function drawEntropyChart(canvas: HTMLCanvasElement, series: number[]): void {
    // data-points lets tests observe the series length without a 2d context
    canvas.dataset.points = String(series.length);
    const ctx = canvas.getContext("2d");
    if (!ctx || series.length === 0) {
        return;
    }
    const w = canvas.width;
    const h = canvas.height;
    ctx.clearRect(0, 0, w, h);

    const lo = Math.min(...series);
    const hi = Math.max(...series);
    const span = hi - lo || 1;
    const x = (i: number) =>
        MARGIN + (series.length === 1 ? 0 : (i / (series.length - 1)) * (w - 2 * MARGIN));
    const y = (v: number) => h - MARGIN - ((v - lo) / span) * (h - 2 * MARGIN);

    ctx.strokeStyle = "#999";
    ctx.lineWidth = 1;
    ctx.beginPath();
    ctx.moveTo(MARGIN, MARGIN / 2);
    ctx.lineTo(MARGIN, h - MARGIN);
    ctx.lineTo(w - MARGIN / 2, h - MARGIN);
    ctx.stroke();

    ctx.strokeStyle = "#2a6fbb";
    ctx.lineWidth = 2;
    ctx.beginPath();
    series.forEach((v, i) => {
        if (i === 0) {
            ctx.moveTo(x(i), y(v));
        } else {
            ctx.lineTo(x(i), y(v));
        }
    });
    ctx.stroke();

    ctx.fillStyle = "#444";
    ctx.font = "10px sans-serif";
    ctx.fillText(hi.toFixed(1), 2, y(hi) + 3);
    ctx.fillText(lo.toFixed(1), 2, y(lo) + 3);
    ctx.fillText("nats", 2, MARGIN / 2 + 3);
}
