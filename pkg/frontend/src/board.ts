import type { Position, StateDocument, Viewport } from "./protocol.js";
import { pinKey } from "./protocol.js";
import {
    elementBounds,
    hitTest,
    pinPoint,
    screenToWorld,
    wireRoute,
    type HitTarget,
} from "./geometry.js";
import { drawElement, drawPendingRing, drawWire, palette } from "./glyphs.js";

const EMPTY_STATE: StateDocument = {
    elements: [],
    connections: [],
    levels: {},
    indicators: {},
    diagnostics: [],
    mode: "normal",
    pending_pin: null,
    viewport: { zoom: 1.0, pan: { dx: 0, dy: 0 } },
};

// Canvas view over a StateDocument. Pure presentation: the board never
// talks to the service, it just draws whatever state it was given last.
//
// The viewport is tracked separately from the state document so pans and
// pinches can render immediately while the matching set_viewport command
// is still in flight.
export class BoardView {
    public readonly canvas: HTMLCanvasElement;
    private readonly ctx: CanvasRenderingContext2D | null;
    private state: StateDocument = EMPTY_STATE;
    private viewport: Viewport = { zoom: 1.0, pan: { dx: 0, dy: 0 } };
    private dragGhost: { element: number; position: Position } | null = null;

    public constructor(canvas: HTMLCanvasElement) {
        this.canvas = canvas;
        this.ctx = canvas.getContext("2d");
    }

    public setState(state: StateDocument): void {
        this.state = state;
        this.render();
    }

    public getState(): StateDocument {
        return this.state;
    }

    public getViewport(): Viewport {
        return { zoom: this.viewport.zoom, pan: { ...this.viewport.pan } };
    }

    public setViewport(viewport: Viewport): void {
        this.viewport = { zoom: viewport.zoom, pan: { ...viewport.pan } };
        this.render();
    }

    public setDragGhost(element: number, position: Position): void {
        this.dragGhost = { element, position };
        this.render();
    }

    public clearDragGhost(): void {
        this.dragGhost = null;
        this.render();
    }

    public toWorld(screenX: number, screenY: number): Position {
        return screenToWorld(this.viewport, { x: screenX, y: screenY });
    }

    public pick(screenX: number, screenY: number): HitTarget {
        const w = this.toWorld(screenX, screenY);
        return hitTest(this.effectiveState(), w.x, w.y);
    }

    public centerWorld(): Position {
        return this.toWorld(this.cssWidth() / 2, this.cssHeight() / 2);
    }

    public resize(): void {
        const dpr = typeof devicePixelRatio === "number" ? devicePixelRatio : 1;
        const width = Math.max(1, Math.round(this.cssWidth() * dpr));
        const height = Math.max(1, Math.round(this.cssHeight() * dpr));
        if (this.canvas.width !== width || this.canvas.height !== height) {
            this.canvas.width = width;
            this.canvas.height = height;
        }
        this.render();
    }

    public render(): void {
        const ctx = this.ctx;
        if (ctx === null) {
            return;
        }
        const dpr = typeof devicePixelRatio === "number" ? devicePixelRatio : 1;
        const state = this.effectiveState();
        const view = this.viewport;

        ctx.setTransform(1, 0, 0, 1, 0, 0);
        ctx.fillStyle = palette.background;
        ctx.fillRect(0, 0, this.canvas.width, this.canvas.height);

        ctx.setTransform(
            dpr * view.zoom,
            0,
            0,
            dpr * view.zoom,
            dpr * view.pan.dx,
            dpr * view.pan.dy,
        );

        this.drawGrid(ctx);

        for (const conn of state.connections) {
            const from = this.findPin(state, conn.from.element, conn.from.pin);
            const to = this.findPin(state, conn.to.element, conn.to.pin);
            if (from === null || to === null) {
                continue;
            }
            drawWire(ctx, wireRoute(from, to), state.levels[pinKey(conn.from)]);
        }

        for (const el of state.elements) {
            drawElement(ctx, el, state.indicators[String(el.id)]);
        }

        if (state.pending_pin !== null) {
            const dot = state.pending_pin.indexOf(".");
            const elementId = Number(state.pending_pin.slice(0, dot));
            const pin = state.pending_pin.slice(dot + 1);
            const at = this.findPin(state, elementId, pin);
            if (at !== null) {
                drawPendingRing(ctx, at);
            }
        }

        // Screen-space overlay: a red frame while delete mode is armed.
        if (state.mode === "delete_active") {
            ctx.setTransform(dpr, 0, 0, dpr, 0, 0);
            ctx.strokeStyle = palette.danger;
            ctx.lineWidth = 4;
            ctx.strokeRect(2, 2, this.cssWidth() - 4, this.cssHeight() - 4);
        }
    }

    private findPin(state: StateDocument, elementId: number, pin: string) {
        for (const el of state.elements) {
            if (el.id === elementId) {
                return pinPoint(el, pin);
            }
        }
        return null;
    }

    // State with the drag preview applied on top.
    private effectiveState(): StateDocument {
        const ghost = this.dragGhost;
        if (ghost === null) {
            return this.state;
        }
        return {
            ...this.state,
            elements: this.state.elements.map((el) =>
                el.id === ghost.element ? { ...el, position: ghost.position } : el,
            ),
        };
    }

    private drawGrid(ctx: CanvasRenderingContext2D): void {
        const step = 40;
        const topLeft = this.toWorld(0, 0);
        const bottomRight = this.toWorld(this.cssWidth(), this.cssHeight());
        const x0 = Math.floor(topLeft.x / step) * step;
        const y0 = Math.floor(topLeft.y / step) * step;
        ctx.fillStyle = palette.grid;
        for (let x = x0; x <= bottomRight.x; x += step) {
            for (let y = y0; y <= bottomRight.y; y += step) {
                ctx.fillRect(x - 1, y - 1, 2, 2);
            }
        }
    }

    private cssWidth(): number {
        return this.canvas.clientWidth || this.canvas.width;
    }

    private cssHeight(): number {
        return this.canvas.clientHeight || this.canvas.height;
    }

    public static emptyState(): StateDocument {
        return EMPTY_STATE;
    }
}
