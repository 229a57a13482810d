import { defineConfig } from "vitest/config";

// The shipped UI is served from the advisor service's own origin; tests mirror
// that by giving the happy-dom window the service URL when ADVISOR_URL is set.
export default defineConfig({
  test: {
    environment: "happy-dom",
    environmentOptions: {
      happyDOM: { url: process.env.ADVISOR_URL ?? "http://localhost/" },
    },
    include: ["tests/**/*.test.ts"],
  },
});
