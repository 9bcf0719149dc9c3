import { confirmDialog } from "./dialog.js";
import { HelpScreen } from "./help.js";
import { HomeScreen } from "./home.js";
import { SimulationScreen } from "./simulation.js";

export interface AppOptions {
    // Base URL of the service; empty string means same origin.
    apiBase?: string;
}

export class App {
    public readonly root: HTMLElement;
    private readonly apiBase: string;
    private simulation: SimulationScreen | null = null;

    public constructor(root: HTMLElement, options: AppOptions = {}) {
        this.root = root;
        this.apiBase = options.apiBase ?? "";
    }

    public start(): void {
        this.showHome();
    }

    public showHome(): void {
        this.teardownSimulation();
        const home = new HomeScreen({
            onNew: () => void this.showSimulation(),
            onHelp: () => this.showHelp(),
            onExit: () => void this.confirmExitFromHome(),
        });
        this.swap(home.root);
    }

    public showHelp(): void {
        this.teardownSimulation();
        const help = new HelpScreen(() => this.showHome());
        this.swap(help.root);
    }

    public async showSimulation(): Promise<SimulationScreen> {
        this.teardownSimulation();
        const sim = new SimulationScreen(
            {
                onLeave: () => this.showHome(),
                onExit: () => this.showGoodbye(),
            },
            this.apiBase,
        );
        this.simulation = sim;
        this.swap(sim.root);
        await sim.enter();
        return sim;
    }

    public showGoodbye(): void {
        this.teardownSimulation();
        const screen = document.createElement("div");
        screen.className = "screen goodbye-screen";
        const message = document.createElement("p");
        message.textContent = "Thanks for stopping by. You can close this tab now.";
        screen.append(message);
        this.swap(screen);
        // Browsers only honour this for windows a script opened, but it
        // costs nothing to try.
        try {
            window.close();
        } catch {
            // Leave the goodbye screen up.
        }
    }

    public get currentSimulation(): SimulationScreen | null {
        return this.simulation;
    }

    private async confirmExitFromHome(): Promise<void> {
        const yes = await confirmDialog(this.root, "Exit gateboard?");
        if (yes) {
            this.showGoodbye();
        }
    }

    private teardownSimulation(): void {
        if (this.simulation !== null) {
            this.simulation.leave();
            this.simulation = null;
        }
    }

    private swap(screen: HTMLElement): void {
        this.root.replaceChildren(screen);
    }
}
