import { defineConfig } from "vitest/config";

export default defineConfig({
    test: {
        include: ["tests/**/*.test.ts"],
        // UI tests opt into happy-dom with a @vitest-environment pragma;
        // everything else runs in plain node.
        environment: "node",
        testTimeout: 30000,
        hookTimeout: 30000,
    },
});
