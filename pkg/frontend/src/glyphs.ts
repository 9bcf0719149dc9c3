import type { ElementDoc, IndicatorState, LevelSymbol, Position } from "./protocol.js";
import { elementBounds, pinPoints, type Bounds } from "./geometry.js";

export const palette = {
    background: "#10141c",
    grid: "#1d2430",
    body: "#2a3344",
    bodyEdge: "#8fa3c0",
    bodyText: "#dce5f2",
    label: "#7e8ba0",
    pin: "#8fa3c0",
    pendingPin: "#ffd166",
    wireHigh: "#53d769",
    wireLow: "#55627a",
    wireUndefined: "#e0a43c",
    indicatorOn: "#ffd166",
    indicatorOff: "#39414f",
    danger: "#e4574f",
};

export function wireColor(level: LevelSymbol | undefined): string {
    if (level === "1") {
        return palette.wireHigh;
    }
    if (level === "0") {
        return palette.wireLow;
    }
    return palette.wireUndefined;
}

export function drawWire(
    ctx: CanvasRenderingContext2D,
    points: Position[],
    level: LevelSymbol | undefined,
): void {
    if (points.length < 2) {
        return;
    }
    ctx.save();
    ctx.strokeStyle = wireColor(level);
    ctx.lineWidth = level === "1" ? 3 : 2;
    ctx.lineJoin = "round";
    if (level !== "0" && level !== "1") {
        ctx.setLineDash([6, 4]);
    }
    ctx.beginPath();
    ctx.moveTo(points[0]!.x, points[0]!.y);
    for (let i = 1; i < points.length; i++) {
        ctx.lineTo(points[i]!.x, points[i]!.y);
    }
    ctx.stroke();
    ctx.restore();
}

export function drawElement(
    ctx: CanvasRenderingContext2D,
    el: ElementDoc,
    indicator: IndicatorState | undefined,
): void {
    const bounds = elementBounds(el);
    drawPinStubs(ctx, el, bounds);
    if (el.kind === "gate") {
        drawGate(ctx, (el.params as { gate: string }).gate, bounds);
    } else if (el.kind === "input") {
        const params = el.params as { input: string; on: boolean };
        if (params.input === "switch") {
            drawSwitch(ctx, bounds, params.on);
        } else {
            drawConst(ctx, bounds, params.input === "const1");
        }
    } else {
        const output = (el.params as { output: string }).output;
        drawIndicator(ctx, output, bounds, indicator ?? "undefined");
    }
    drawName(ctx, el, bounds);
}

function drawName(ctx: CanvasRenderingContext2D, el: ElementDoc, b: Bounds): void {
    const label = el.name ?? `#${el.id}`;
    ctx.save();
    ctx.fillStyle = palette.label;
    ctx.font = "11px sans-serif";
    ctx.textAlign = "center";
    ctx.textBaseline = "top";
    ctx.fillText(label, b.x + b.width / 2, b.y + b.height + 6);
    ctx.restore();
}

function drawPinStubs(ctx: CanvasRenderingContext2D, el: ElementDoc, b: Bounds): void {
    ctx.save();
    ctx.strokeStyle = palette.pin;
    ctx.fillStyle = palette.pin;
    ctx.lineWidth = 2;
    for (const point of pinPoints(el)) {
        const edgeX = point.direction === "in" ? b.x : b.x + b.width;
        ctx.beginPath();
        ctx.moveTo(point.x, point.y);
        ctx.lineTo(edgeX, point.y);
        ctx.stroke();
        ctx.beginPath();
        ctx.arc(point.x, point.y, 4, 0, Math.PI * 2);
        ctx.fill();
    }
    ctx.restore();
}

export function drawPendingRing(ctx: CanvasRenderingContext2D, at: Position): void {
    ctx.save();
    ctx.strokeStyle = palette.pendingPin;
    ctx.lineWidth = 2.5;
    ctx.beginPath();
    ctx.arc(at.x, at.y, 9, 0, Math.PI * 2);
    ctx.stroke();
    ctx.restore();
}

// Classic distinctive silhouettes. All shapes are drawn into the body
// bounds; the inversion bubble eats a little of the right edge.

function drawGate(ctx: CanvasRenderingContext2D, gate: string, b: Bounds): void {
    const inverted = gate === "not" || gate === "nand" || gate === "nor" || gate === "xnor";
    const bubbleR = 6;
    const body: Bounds = inverted
        ? { ...b, width: b.width - 2 * bubbleR }
        : b;

    ctx.save();
    ctx.fillStyle = palette.body;
    ctx.strokeStyle = palette.bodyEdge;
    ctx.lineWidth = 2;

    if (gate === "not" || gate === "buf") {
        triangle(ctx, body);
    } else if (gate === "and" || gate === "nand") {
        dShape(ctx, body);
    } else {
        shield(ctx, body, gate === "xor" || gate === "xnor");
    }
    ctx.fill();
    ctx.stroke();

    if (inverted) {
        ctx.beginPath();
        ctx.arc(body.x + body.width + bubbleR, b.y + b.height / 2, bubbleR, 0, Math.PI * 2);
        ctx.fill();
        ctx.stroke();
    }

    ctx.fillStyle = palette.bodyText;
    ctx.font = "bold 12px sans-serif";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    const tx = gate === "not" || gate === "buf"
        ? body.x + body.width * 0.38
        : body.x + body.width * 0.45;
    ctx.fillText(gate.toUpperCase(), tx, b.y + b.height / 2);
    ctx.restore();
}

function triangle(ctx: CanvasRenderingContext2D, b: Bounds): void {
    ctx.beginPath();
    ctx.moveTo(b.x, b.y);
    ctx.lineTo(b.x + b.width, b.y + b.height / 2);
    ctx.lineTo(b.x, b.y + b.height);
    ctx.closePath();
}

function dShape(ctx: CanvasRenderingContext2D, b: Bounds): void {
    const flat = b.width * 0.45;
    ctx.beginPath();
    ctx.moveTo(b.x, b.y);
    ctx.lineTo(b.x + flat, b.y);
    ctx.arc(b.x + flat, b.y + b.height / 2, b.height / 2, -Math.PI / 2, Math.PI / 2);
    ctx.lineTo(b.x, b.y + b.height);
    ctx.closePath();
}

function shield(ctx: CanvasRenderingContext2D, b: Bounds, doubleBack: boolean): void {
    const backCurve = b.width * 0.22;
    ctx.beginPath();
    ctx.moveTo(b.x, b.y);
    ctx.quadraticCurveTo(b.x + b.width * 0.72, b.y, b.x + b.width, b.y + b.height / 2);
    ctx.quadraticCurveTo(b.x + b.width * 0.72, b.y + b.height, b.x, b.y + b.height);
    ctx.quadraticCurveTo(b.x + backCurve, b.y + b.height / 2, b.x, b.y);
    ctx.closePath();
    if (doubleBack) {
        // Second back arc, slightly offset, marks the exclusive variants.
        ctx.moveTo(b.x - 7, b.y);
        ctx.quadraticCurveTo(b.x + backCurve - 7, b.y + b.height / 2, b.x - 7, b.y + b.height);
    }
}

function drawSwitch(ctx: CanvasRenderingContext2D, b: Bounds, on: boolean): void {
    ctx.save();
    ctx.fillStyle = palette.body;
    ctx.strokeStyle = palette.bodyEdge;
    ctx.lineWidth = 2;
    roundedRect(ctx, b.x, b.y, b.width, b.height, 8);
    ctx.fill();
    ctx.stroke();

    // Slider knob sits left for off and right for on, so the state is
    // readable without colour.
    const knobR = b.height / 2 - 6;
    const knobX = on ? b.x + b.width - knobR - 6 : b.x + knobR + 6;
    ctx.fillStyle = on ? palette.indicatorOn : palette.wireLow;
    ctx.beginPath();
    ctx.arc(knobX, b.y + b.height / 2, knobR, 0, Math.PI * 2);
    ctx.fill();
    ctx.stroke();

    ctx.fillStyle = palette.bodyText;
    ctx.font = "10px sans-serif";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    const labelX = on ? b.x + b.width * 0.3 : b.x + b.width * 0.7;
    ctx.fillText(on ? "1" : "0", labelX, b.y + b.height / 2);
    ctx.restore();
}

function drawConst(ctx: CanvasRenderingContext2D, b: Bounds, high: boolean): void {
    ctx.save();
    ctx.fillStyle = palette.body;
    ctx.strokeStyle = palette.bodyEdge;
    ctx.lineWidth = 2;
    roundedRect(ctx, b.x, b.y, b.width, b.height, 4);
    ctx.fill();
    ctx.stroke();
    ctx.fillStyle = palette.bodyText;
    ctx.font = "bold 14px sans-serif";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    ctx.fillText(high ? "1" : "0", b.x + b.width / 2, b.y + b.height / 2);
    ctx.restore();
}

function drawIndicator(
    ctx: CanvasRenderingContext2D,
    output: string,
    b: Bounds,
    state: IndicatorState,
): void {
    ctx.save();
    ctx.strokeStyle = palette.bodyEdge;
    ctx.lineWidth = 2;

    if (state === "on") {
        ctx.fillStyle = palette.indicatorOn;
    } else if (state === "off") {
        ctx.fillStyle = palette.indicatorOff;
    } else {
        ctx.fillStyle = palette.indicatorOff;
    }

    if (output === "lamp") {
        ctx.beginPath();
        ctx.arc(b.x + b.width / 2, b.y + b.height / 2, b.width / 2 - 2, 0, Math.PI * 2);
    } else {
        roundedRect(ctx, b.x + 2, b.y + 2, b.width - 4, b.height - 4, 6);
    }
    ctx.fill();
    if (state === "undefined") {
        hatch(ctx, b);
    }
    if (output === "lamp") {
        ctx.beginPath();
        ctx.arc(b.x + b.width / 2, b.y + b.height / 2, b.width / 2 - 2, 0, Math.PI * 2);
        ctx.stroke();
    } else {
        roundedRect(ctx, b.x + 2, b.y + 2, b.width - 4, b.height - 4, 6);
        ctx.stroke();
    }
    ctx.restore();
}

// Diagonal hatching marks an undefined level: neither lit nor dark.
function hatch(ctx: CanvasRenderingContext2D, b: Bounds): void {
    ctx.save();
    ctx.beginPath();
    ctx.rect(b.x, b.y, b.width, b.height);
    ctx.clip();
    ctx.strokeStyle = palette.wireUndefined;
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    for (let x = b.x - b.height; x < b.x + b.width; x += 7) {
        ctx.moveTo(x, b.y + b.height);
        ctx.lineTo(x + b.height, b.y);
    }
    ctx.stroke();
    ctx.restore();
}

function roundedRect(
    ctx: CanvasRenderingContext2D,
    x: number,
    y: number,
    w: number,
    h: number,
    r: number,
): void {
    ctx.beginPath();
    ctx.moveTo(x + r, y);
    ctx.arcTo(x + w, y, x + w, y + h, r);
    ctx.arcTo(x + w, y + h, x, y + h, r);
    ctx.arcTo(x, y + h, x, y, r);
    ctx.arcTo(x, y, x + w, y, r);
    ctx.closePath();
}
